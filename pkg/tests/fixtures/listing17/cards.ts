import { Component, Input } from '@angular/core';

@Component({
    selector: 'app-user-card',
    template: `<div>{{ user.name }} - {{ user.email }}</div>`
})
export class UserCardComponent {
    @Input() user: {
        name: string;
        email: string
    } = { name: '', email: '' };
}
@Component({
    selector: 'app-admin-card',
    template: `<div>{{ admin.name }} - {{ admin.email }}</div>`
})
export class AdminCardComponent {
    @Input() admin: {
        name: string;
        email: string
    } = { name: '', email: '' };
}
