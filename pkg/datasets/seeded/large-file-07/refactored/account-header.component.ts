import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-account-header', template: `<p>{{ title }}</p>` })
export class AccountHeaderComponent { title = 'Account header'; }
