import { Component, Input, input } from '@angular/core';

export interface AccountCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
}

@Component({
  selector: 'app-account-card',
  template: `<div>{{ config.name }}</div>`
})
export class AccountCardComponent {
  @Input() config!: AccountCardConfig;
}
