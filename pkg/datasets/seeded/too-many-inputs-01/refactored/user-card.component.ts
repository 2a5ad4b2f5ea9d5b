import { Component, Input, input } from '@angular/core';

export interface UserCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
}

@Component({
  selector: 'app-user-card',
  template: `<div>{{ config.name }}</div>`
})
export class UserCardComponent {
  @Input() config!: UserCardConfig;
}
