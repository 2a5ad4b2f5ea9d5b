import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-user-card',
  template: `<div>{{ name }}</div>`
})
export class UserCardComponent {
  @Input() name!: string;
  @Input() age!: number;
  @Input() email!: string;
  @Input() role!: string;
  @Input() isActive!: boolean;
  @Input() showAvatar!: boolean;
}
